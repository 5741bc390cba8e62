import tensorflow as tf

s = 0
for i in range(4):
    s += 1
    tf.constant(s)
