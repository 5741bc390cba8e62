import tensorflow as tf

base = tf.constant([1.0, 2.0])
for i in range(4):
    for j in range(4):
        row = tf.add(base, i)  # expect: RNC001
