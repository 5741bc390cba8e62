import tensorflow as tf

c = tf.constant(2.0)
values = [1.0, 2.0, 3.0]
for i, x in enumerate(values):
    tf.square(x)
    tf.square(c)
