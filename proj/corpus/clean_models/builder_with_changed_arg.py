import tensorflow as tf

a = tf.constant([[1.0]])


def build(v):
    return tf.matmul(a, v)


for i in range(3):
    build(tf.constant([[float(i)]]))
